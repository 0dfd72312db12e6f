public class Recursion189
{
  public static double average(int[] nums)
  {
    double total = 0;
    for (int v : nums)
    {
      total = total + v;
    }
    return total / nums.length;
  }

  public static long fact(int n)
  {
    if (n <= 1)
    {
      return 1;
    }
    return n * fact(n - 1);
  }

  static int fib(int n)
  {
    int first = 0;
    int second = 1;
    for (int idx = 0; idx < n; idx++)
    {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  public static int find(int[] nums, int wanted)
  {
    for (int idx = 0; idx < nums.length; idx++)
    {
      if (nums[idx] == wanted)
      {
        return idx;
      }
    }
    return -1;
  }

  static boolean isPrime(int n)
  {
    if (n < 2)
    {
      return false;
    }
    int factor = 2;
    while (factor * factor <= n)
    {
      if (n % factor == 0)
      {
        return false;
      }
      factor++;
    }
    return true;
  }

  public static void main(String[] args)
  {
    int[] numbers = {6, 5, 2, 4, 6, 6, 7};
    double avg = average(numbers);
    System.out.println("Average: " + avg);
    System.out.println(fact(6));
    System.out.println("Fib: " + fib(10));
    int pos = find(numbers, 9);
    System.out.println("Found at " + pos);
    for (int q = 2; q < 29; q++)
    {
      if (isPrime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
  }
}
