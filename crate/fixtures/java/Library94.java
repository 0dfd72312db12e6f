import java.util.ArrayList;

/**
 * Library94 program.
 */
public class Library94 {
  static final int LIMIT = 58;

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static boolean checkPrime(int n) {
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

  public static int search(int[] values, int wanted) {
    for (int idx = 0; idx < values.length; idx++) {
      if (values[idx] == wanted) {
        return idx;
      }
    }
    return -1;
  }

  public static boolean isPalindrome(String word) {
    int left = 0;
    int right = word.length() - 1;
    while (left < right) {
      if (word.charAt(left) != word.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  static boolean isEven(int n) {
    return n % 2 == 0;
  }

  static ArrayList<Integer> filterEven(int[] values) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : values) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  public static double computeBmi(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  static int fib(int n) {
    int a = 0;
    int b = 1;
    for (int idx = 0; idx < n; idx++) {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  static int largest(int[] values) {
    int max = values[0];
    for (int idx = 1; idx < values.length; idx++) {
      if (values[idx] > max) {
        max = values[idx];
      }
    }
    return max;
  }

  public static int digitSum(int n) {
    int acc = 0;
    while (n > 0) {
      acc += n % 10;
      n /= 10;
    }
    return acc;
  }

  public static void main(String[] args) {
    int[] numbers = {1, 5, 7, 7, 6, 1, 6};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    System.out.println("GCD: " + gcd(75, 55));
    for (int q = 2; q < 35; q++) {
      if (checkPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    int pos = search(numbers, 2);
    System.out.println("Found at " + pos);
    System.out.println(isPalindrome("racecar"));
    if (isEven(24)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("BMI: " + computeBmi(85.5, 1.79));
    System.out.println("Fib: " + fib(16));
    int top = largest(numbers);
    System.out.println("Max is " + top);
    System.out.println("Digits: " + digitSum(68999));
  }
}
