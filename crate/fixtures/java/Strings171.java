public class Strings171
{
  static int greatestDivisor(int a, int b)
  {
    while (b != 0)
    {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static boolean isEven(int num)
  {
    return num % 2 == 0;
  }

  public static double bodyMassIndex(double kg, double meters)
  {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static double toFahrenheit(double degrees)
  {
    return degrees * 9 / 5 + 32;
  }

  public static void printTriangle(int size)
  {
    for (int row = 1; row <= size; row++)
    {
      for (int col = 0; col < row; col++)
      {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static int findMax(int[] data)
  {
    int max = data[0];
    for (int idx = 1; idx < data.length; idx++)
    {
      if (data[idx] > max)
      {
        max = data[idx];
      }
    }
    return max;
  }

  static void launch(int left)
  {
    do
    {
      System.out.println(left);
      left--;
      } while (left > 0);
      System.out.println("Go!");
    }

  static int countVowels(String line)
  {
    int c = 0;
    for (int idx = 0; idx < line.length(); idx++)
    {
      char ch = Character.toLowerCase(line.charAt(idx));
      switch (ch)
      {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        c++;
        break;
        default:
        break;
      }
    }
    return c;
  }

  public static boolean isPalindrome(String line)
  {
    int left = 0;
    int right = line.length() - 1;
    while (left < right)
    {
      if (line.charAt(left) != line.charAt(right))
      {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static double mean(int[] data)
  {
    double sum = 0;
    for (int v : data)
    {
      sum = sum + v;
    }
    return sum / data.length;
  }

  public static void main(String[] args)
  {
    int[] numbers = {8, 5, 8, 5, 8, 1};
    System.out.println("GCD: " + greatestDivisor(45, 39));
    if (isEven(22))
    {
      System.out.println("even");
    }
    else
    {
      System.out.println("odd");
    }
    System.out.println("BMI: " + bodyMassIndex(58.5, 1.87));
    System.out.println(toFahrenheit(-9.0));
    printTriangle(5);
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    launch(3);
    System.out.println(countVowels("banana"));
    System.out.println(isPalindrome("racecar"));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
  }
}
