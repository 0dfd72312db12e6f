import java.util.Random;

/**
 * Strings96 program.
 */
public class Strings96 {
  static class Point {
    int x;
    int y;
    Point(int x, int y) {
      this.x = x;
      this.y = y;
    }
    double distance() {
      return Math.sqrt(x * x + y * y);
    }
  }

  static boolean isEven(int n) {
    return n % 2 == 0;
  }

  public static int addAll(int[] nums) {
    int result = 0;
    for (int j = 0; j < nums.length; j++) {
      result += nums[j];
    }
    return result;
  }

  public static int indexOf(int[] nums, int target) {
    for (int j = 0; j < nums.length; j++) {
      if (nums[j] == target) {
        return j;
      }
    }
    return -1;
  }

  public static int sumDigits(int n) {
    int result = 0;
    while (n > 0) {
      result += n % 10;
      n /= 10;
    }
    return result;
  }

  public static double average(int[] nums) {
    double result = 0;
    for (int v : nums) {
      result = result + v;
    }
    return result / nums.length;
  }

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] nums = new int[size];
    for (int j = 0; j < size; j++) {
      nums[j] = rand.nextInt(100);
    }
    return nums;
  }

  static boolean prime(int n) {
    if (n < 2) {
      return false;
    }
    int div = 2;
    while (div * div <= n) {
      if (n % div == 0) {
        return false;
      }
      div++;
    }
    return true;
  }

  public static boolean palindrome(String line) {
    int left = 0;
    int right = line.length() - 1;
    while (left < right) {
      if (line.charAt(left) != line.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  static int fib(int n) {
    int first = 0;
    int second = 1;
    for (int j = 0; j < n; j++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  public static int toNumber(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static void main(String[] args) {
    int[] numbers = {9, 7, 5, 9, 8, 4};
    Point p = new Point(8, 5);
    System.out.println(p.distance());
    if (isEven(19)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    System.out.println("Sum: " + addAll(numbers));
    int pos = indexOf(numbers, 9);
    System.out.println("Found at " + pos);
    System.out.println("Digits: " + sumDigits(41502));
    double avg = average(numbers);
    System.out.println("Average: " + avg);
    int[] random = fillRandom(7);
    System.out.println(random.length);
    for (int q = 2; q < 12; q++) {
      if (prime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    System.out.println(palindrome("racecar"));
    System.out.println("Fib: " + fib(10));
    int parsed = toNumber("abc");
    System.out.println(parsed);
  }
}
